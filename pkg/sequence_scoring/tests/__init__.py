from . import test_config
from . import test_sequence
from . import test_insertion
from . import test_sorting
from . import test_instance_generator
from . import test_oracle
from . import test_instance_file
from . import test_report
from . import test_cli
