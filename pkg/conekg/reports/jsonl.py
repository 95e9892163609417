# -*- coding: utf-8 -*-

"""
JSON Lines Formatter
====================

"""


# %% IMPORTS
# Built-in imports
import json

# Package imports
import numpy as np

# ConeKG imports
from conekg.reports.base import BaseFormatter

# All declaration
__all__ = ['JsonlFormatter']


# %% CLASS DEFINITIONS
# Define formatter for machine-readable reports
class JsonlFormatter(BaseFormatter):
    # Define class attributes
    TYPE = "JSON Lines"
    EXTS = ['.jsonl']

    # Write every record of every report as a single JSON object
    def write(self, reports, file):
        for report in reports:
            for record in report.to_records():
                file.write(json.dumps(record, default=_to_builtin))
                file.write("\n")


# %% HELPER DEFINITIONS
# This function converts NumPy scalars to built-in Python types
def _to_builtin(obj):
    if isinstance(obj, np.generic):
        return(obj.item())
    raise TypeError("Object of type %s is not JSON serializable"
                    % (type(obj).__name__))
