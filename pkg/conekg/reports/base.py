# -*- coding: utf-8 -*-

"""
Base Formatters
===============

"""


# %% IMPORTS
# Built-in imports
import abc

# All declaration
__all__ = ['BaseFormatter']


# %% CLASS DEFINITIONS
# Define BaseFormatter abstract base class
class BaseFormatter(object, metaclass=abc.ABCMeta):
    """
    Provides an abstract base class definition that must be subclassed by all
    report formatters.

    Subclasses set the class attributes `TYPE` (a description of the file
    type) and `EXTS` (the list of file extensions it writes), and implement
    :meth:`~write`.

    """

    # Check that the subclass describes its file type
    def __init__(self):
        missing = [attr for attr in ('TYPE', 'EXTS')
                   if not hasattr(self, attr)]
        if missing:
            raise NotImplementedError(
                "%s must set the class attribute(s) %s!"
                % (self.__class__.__name__, ', '.join(missing)))

    @property
    def type(self):
        return(self.TYPE)

    @property
    def exts(self):
        return(list(self.EXTS))

    # This function writes reports to a file
    def exporter(self, reports, filepath):
        """
        Writes the provided `reports` to the file `filepath`, which is
        overwritten if it exists.

        """

        with open(filepath, 'w', encoding='utf-8', newline='\n') as file:
            self.write(reports, file)

    # Define write abstract method
    @abc.abstractmethod
    def write(self, reports, file):
        """
        Writes the provided `reports` to the opened text `file`.

        Parameters
        ----------
        reports : list of report objects
            The reports that must be written. Every report provides the
            methods `to_records()` and `to_text()`.
        file : file object
            The file to write to.

        """

        pass
