from ._hygirth import *  # noqa: F401,F403
from ._hygirth import __version__  # noqa: F401
