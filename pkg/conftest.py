import os

from hypothesis import HealthCheck, settings

from app_logging import configure_logging

configure_logging(level=os.environ.get("REVBOUND_LOG_LEVEL", "WARNING"))

settings.register_profile("default", max_examples=200, deadline=None)
settings.register_profile("ci", max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))
