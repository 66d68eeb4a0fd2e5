# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).

import configparser
import logging
import os

from gettext import gettext as _

from ..exceptions import UserError

_logger = logging.getLogger(__name__)

SECTION = "options"

DEFAULT_OPTIONS = {
    "exact_sss_limit": 9,
    "scalar_bits": 64,
    "log_level": "warning",
    "bench_sizes": "1000,2000,4000",
    "bench_reps": 3,
    "seed": 0,
    "workers": 1,
}


class ConfigManager:
    """Options read from an INI file, section ``[options]``.

    The file is looked up in ``$SEQUENCE_SCORING_RC`` then in
    ``~/.sequence_scoring.cfg``. Values are coerced to the type of their
    default; unknown keys are kept as strings.
    """

    def __init__(self):
        self.options = dict(DEFAULT_OPTIONS)
        self.rcfile = None

    def _default_rcfile(self):
        rcfile = os.environ.get("SEQUENCE_SCORING_RC")
        if rcfile:
            return rcfile
        return os.path.join(os.path.expanduser("~"), ".sequence_scoring.cfg")

    def load(self, rcfile=None):
        self.options = dict(DEFAULT_OPTIONS)
        self.rcfile = rcfile or self._default_rcfile()
        if not os.path.exists(self.rcfile):
            if rcfile:
                raise UserError(
                    _("Configuration file '%(path)s' does not exist.")
                    % {"path": rcfile}
                )
            return self
        parser = configparser.ConfigParser()
        try:
            parser.read(self.rcfile, encoding="utf-8")
        except configparser.Error as e:
            raise UserError(
                _("Configuration file '%(path)s' is not valid:\n\n %(error)s")
                % {"path": self.rcfile, "error": e}
            ) from e
        if parser.has_section(SECTION):
            for key, value in parser.items(SECTION):
                self.options[key] = self._coerce(key, value)
        _logger.debug("Configuration loaded from %s", self.rcfile)
        return self

    def _coerce(self, key, value):
        default = DEFAULT_OPTIONS.get(key)
        if isinstance(default, int):
            try:
                return int(value)
            except ValueError as e:
                raise UserError(
                    _("Option '%(key)s' expects an integer, got '%(value)s'.")
                    % {"key": key, "value": value}
                ) from e
        return value

    def get(self, key, default=None):
        return self.options.get(key, default)

    def __getitem__(self, key):
        return self.options[key]

    def __setitem__(self, key, value):
        self.options[key] = self._coerce(key, str(value))

    def scalar_bound(self):
        """Largest magnitude a sum may reach: ``2**(scalar_bits-1) - 1``."""
        return 2 ** (int(self["scalar_bits"]) - 1) - 1


config = ConfigManager()
