#
# Machine specific settings when using development settings. Copy to
# ``local.py`` to use them.
#

# Smaller default runs while iterating.
VERIFY_SAMPLES = 500
VERIFY_MORPHISM_CASES = 200

# Talk to a local worker instead of running tasks in process.
CELERY_TASK_ALWAYS_EAGER = False
VERIFY_FAN_OUT = True
