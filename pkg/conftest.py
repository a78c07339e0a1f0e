"""
Initialize Django for pytest, using the CI settings the test suite runs under
(``manage.py test cellcrystals --settings=cellcrystals.conf.ci``).
"""
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "cellcrystals.conf.ci")
django.setup()
