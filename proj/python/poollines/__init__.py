"""Carpooling journeys injected into a transit timetable as single-trip lines."""

from ._poollines import *  # noqa: F401,F403
from ._poollines import __doc__  # noqa: F401
