import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from hypothesis import settings

# exact arithmetic on larger draws is slow enough to trip the default deadline
settings.register_profile("exppell", deadline=None)
settings.load_profile("exppell")
