"""Advisory envelope validation of experimental records."""

from __future__ import annotations

import logging
from typing import Sequence

from ..envelope import CHF_ENVELOPE, out_of_envelope
from ..types import ChfRecord, EnvelopeFlag, EnvelopeReport

logger = logging.getLogger(__name__)


def validate_envelope(records: Sequence[ChfRecord]) -> EnvelopeReport:
    """Flag every record field outside the compiled-data envelope.

    Flagged records are still usable; the report is informational.
    """

    report = EnvelopeReport(n_records=len(records))
    for index, record in enumerate(records):
        for name, value, bounds in out_of_envelope(record.op):
            report.flags.append(EnvelopeFlag(index, name, value, bounds.low, bounds.high))
        if not CHF_ENVELOPE.contains(record.q_cr):
            report.flags.append(EnvelopeFlag(index, "q_cr", record.q_cr, CHF_ENVELOPE.low, CHF_ENVELOPE.high))
    if report.flags:
        logger.info("%d of %d records outside the data envelope", len(report.flagged_indices), len(records))
    return report
