import logging

from celery import group, shared_task

from regime.sweep import SweepPoint, rows_to_dataframe, sweep_point


@shared_task
def classify_point(n, p, lam, r_max=30.0, grid_points=600):
    return sweep_point(SweepPoint(n, p, lam, r_max, grid_points))


def dispatch_sweep(points, timeout=None):
    """
    Send the points to the Celery workers as one group, results in input order.
    """
    points = list(points)
    logging.info("Dispatching %s sweep points to the broker", len(points))
    job = group(
        classify_point.s(point.n, point.p, point.lam, point.r_max, point.grid_points)
        for point in points
    )
    return rows_to_dataframe(job.apply_async().get(timeout=timeout))
