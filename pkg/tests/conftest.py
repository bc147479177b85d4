"""Shared test configuration.

Property-based tests run exact big-integer arithmetic whose per-example cost
varies widely, so the wall-clock deadline is disabled in favor of a fixed
example budget.
"""
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")
