# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).

from . import tools
from . import models
from . import report
