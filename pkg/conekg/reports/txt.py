# -*- coding: utf-8 -*-

"""
Text Formatter
==============

"""


# %% IMPORTS
# ConeKG imports
from conekg.reports.base import BaseFormatter

# All declaration
__all__ = ['TxtFormatter']


# %% CLASS DEFINITIONS
# Define formatter for human-readable text reports
class TxtFormatter(BaseFormatter):
    # Define class attributes
    TYPE = "Text Document"
    EXTS = ['.txt']

    # Write the text of every report, separated by empty lines
    def write(self, reports, file):
        file.write("\n\n".join(report.to_text() for report in reports))
        file.write("\n")
