# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).

from .config import config
from . import instance_file
