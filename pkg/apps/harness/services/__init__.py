from .demo_service import DemoReport, DemoService, demo_service
from .extremal_service import ExtremalReport, ExtremalService, ObservablePair, extremal_service
from .sweep_service import SweepOutcome, SweepService, sweep_service
from .verify_service import VerifyService, verify_service

__all__ = [
    "DemoReport",
    "DemoService",
    "ExtremalReport",
    "ExtremalService",
    "ObservablePair",
    "SweepOutcome",
    "SweepService",
    "VerifyService",
    "demo_service",
    "extremal_service",
    "sweep_service",
    "verify_service",
]
