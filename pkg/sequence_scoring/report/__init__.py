from . import report_text
from . import report_xlsx
