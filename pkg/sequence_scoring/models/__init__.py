# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).

from . import sequence
from . import insertion
from . import sorting
from . import instance_generator
from . import oracle
