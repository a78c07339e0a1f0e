import logging
from typing import List

from celery import group

from cellcrystals.cartan.datum import CartanDatum, parse_datum
from cellcrystals.celery import app

from . import units

logger = logging.getLogger(__name__)


@app.task
def scan_unit_sub_box(label: str, radius: int, first: int) -> dict:
    """
    Scan the slice z_1 = ``first`` of the unit theorem box.
    """
    result = units.scan_unit_sub_box(parse_datum(label), radius, first)
    return result.as_dict()


def fan_out_scan(datum: CartanDatum, radius: int) -> List[units.SubBoxResult]:
    """
    Scan every slice of the box as a Celery group and collect the results.
    """
    job = group(
        scan_unit_sub_box.s(datum.label, radius, first)
        for first in range(-radius, radius + 1)
    )
    logger.info("Dispatching %d sub-box scans for %s", 2 * radius + 1, datum.label)
    return [units.SubBoxResult.from_dict(data) for data in job.apply_async().get()]
