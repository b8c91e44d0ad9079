###################################################################################################
# Copyright (c) 2024 Enclustra GmbH, Switzerland (info@enclustra.com)
# 
# Permission is hereby granted, free of charge, to any person obtaining a copy of this software
# and associated documentation files (the "Software"), to deal in the Software without
# restriction, including without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
# 
# The above copyright notice and this permission notice shall be included in all copies or
# substantial portions of the Software.
# 
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING
# BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM,
# DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

###################################################################################################
# Description:
#
# Common types used throughout en_obstruct.
###################################################################################################

from enum import Enum


class OutputFormat(Enum):
    """
    Report output formats of the command-line front end.
    """
    Json_s = 0          # Machine format (canonical).
    Table_s = 1         # Human-readable table derived from the JSON report.


class PivotOrder(Enum):
    """
    Order in which candidate vectors are offered when a complement basis is chosen.
    """
    Ascending_s = 0     # First independent candidate wins.
    Descending_s = 1    # Candidates offered in reverse order.


###################################################################################################
# Exceptions and warnings
###################################################################################################

class CutoffError(ValueError):
    """
    A computation needs data above the degree (or level) cutoff it was built with.
    """


class PresentationError(ValueError):
    """
    Malformed presentation: unknown generator, inhomogeneous relation or grammar error.
    """


class MooreChainError(ValueError):
    """
    An attaching map does not land in Moore chains. The message names the violated identity.
    """


class ResolutionBandError(ValueError):
    """
    A truncation does not have vanishing homotopy in the required band.
    """
    def __init__(self, message, nonzero):
        super().__init__(message)
        self.nonzero = nonzero      # {(level, degree): dim}


class LinearizationMismatchError(ValueError):
    """
    Two attaching maps do not realize the same algebraic attaching map.
    """


class HomotopyEquationError(ValueError):
    """
    A proposed homotopy does not satisfy its defining equation exactly.
    """


class RefusalError(ValueError):
    """
    A mathematical step cannot be carried out (e.g. a ladder rung cannot be corrected). The
    certificate describes the obstructing class.
    """
    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class CutoffWarning(Warning):
    """
    Results are only valid through the degree cutoff and generators may exist above it.
    """


###################################################################################################
# Run configuration
###################################################################################################

class RunConfig:
    """
    Configuration of one command-line run.
        command = Sub-command name.
        in_path = Input file (presentation JSON), or None.
        N       = Level cutoff (number of simplicial levels built).
        D       = Internal degree cutoff.
        fmt     = OutputFormat.
        verbose = Print progress to stderr.
        jobs    = Worker count for the per-degree fan-out.
    """

    def __init__(self, command : str, in_path=None, N : int = 3, D : int = 6,
                 fmt : OutputFormat = OutputFormat.Json_s, verbose : bool = False, jobs : int = 1):
        assert N >= 1, "Level cutoff N must be at least 1"
        assert D >= 1, "Degree cutoff D must be at least 1"
        assert jobs >= 1, "Worker count must be at least 1"
        assert isinstance(fmt, OutputFormat), "fmt must be an OutputFormat"
        self.command = command
        self.in_path = in_path
        self.N = int(N)
        self.D = int(D)
        self.fmt = fmt
        self.verbose = bool(verbose)
        self.jobs = int(jobs)

    def __repr__(self):
        return (f"RunConfig({self.command!r}, in_path={self.in_path!r}, N={self.N}, D={self.D}, "
                f"fmt={self.fmt.name}, jobs={self.jobs})")
