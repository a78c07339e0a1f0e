from django.conf import settings
from django.core.checks import Error, register

POSITIVE_SETTINGS = (
    ("GRAPH_VERTEX_CAP", "utils.E001"),
    ("VERIFY_SAMPLES", "utils.E002"),
    ("VERIFY_SAMPLE_RADIUS", "utils.E003"),
    ("VERIFY_MORPHISM_CASES", "utils.E004"),
)


@register()
def check_verification_sizes(app_configs, **kwargs):
    """
    Check that the sizing settings of the verification runs are positive.

    A zero or negative cap or sample count would make ``graph`` refuse every
    box and ``verify`` pass without checking anything.
    """
    errors = []

    for name, check_id in POSITIVE_SETTINGS:
        value = getattr(settings, name, None)
        if isinstance(value, int) and value > 0:
            continue

        errors.append(
            Error(
                f"{name} must be a positive integer, got {value!r}",
                hint=f"Set the {name} environment variable to a positive number",
                id=check_id,
            )
        )

    exhaustive = getattr(settings, "VERIFY_EXHAUSTIVE_LENGTH", None)
    if not isinstance(exhaustive, int) or exhaustive < 0:
        errors.append(
            Error(
                f"VERIFY_EXHAUSTIVE_LENGTH must be a non-negative integer, got {exhaustive!r}",
                id="utils.E005",
            )
        )

    return errors
