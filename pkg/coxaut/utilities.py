"""Miscellaneous classes and functions for coxaut.

Holds the flushed logger, the exception hierarchy with its exit codes, and the
computation budget shared by the Groebner and Hilbert basis engines.
"""
import sys
import time

###################################
## Logging                       ##
###################################

class Logger(object):
    """
    A class for a simple logger with flushed output on stderr.
    """
    def __init__(self, quiet=False):
        """
        Instantiate a Logger.

        Parameters
        ----------
        quiet: `bool`, optional
           Suppress all messages.  Default is False.
        """
        self.quiet = quiet
        self._stages = {}

    def info(self, message):
        """
        Print an info message, flushed immediately.

        Parameters
        ----------
        message: `str`
           Message to output
        """
        if self.quiet:
            return
        print(message, file=sys.stderr, flush=True)

    def start(self, stage):
        """
        Mark the start of a named stage for timing.
        """
        self._stages[stage] = time.time()
        self.info("Starting %s" % (stage))

    def stop(self, stage):
        """
        Log the elapsed wall time of a named stage.
        """
        t0 = self._stages.pop(stage, None)
        if t0 is None:
            return
        self.info("Finished %s in %.2f s" % (stage, time.time() - t0))


def log_info(logger, message):
    """Send a message to an optional logger."""
    if logger is not None:
        logger.info(message)

###################################
## Errors                        ##
###################################

class CoxautError(Exception):
    """
    Base class for all errors raised on purpose by coxaut.

    Each subclass has an ``exit_code`` used by the command line front end.
    """
    exit_code = 1

    def __init__(self, message, witness=None):
        super(CoxautError, self).__init__(message)
        self.witness = witness


class ProblemParseError(CoxautError, ValueError):
    """A problem file or polynomial string could not be parsed."""
    exit_code = 2


class ShapeMismatch(CoxautError, ValueError):
    """Matrices, vectors or groups of incompatible shapes were combined."""
    exit_code = 2


class GradingError(CoxautError, ValueError):
    """Base class for grading diagnostics."""
    exit_code = 3


class NonEffectiveGrading(GradingError):
    """The degrees do not generate the grading group."""
    pass


class NonPointedGrading(GradingError):
    """There is a nonconstant monomial of degree zero."""
    pass


class NotHomogeneous(GradingError):
    """A polynomial is not homogeneous for the grading."""
    pass


class BlockDimMismatch(GradingError):
    """A permutation of generator degrees joins blocks of different size."""
    pass


class NonPointedMonoid(GradingError):
    """A Hilbert basis was requested for a monoid that is not positive."""
    pass


class BudgetExceeded(CoxautError, RuntimeError):
    """A computation ran past one of its budgets."""
    exit_code = 4


class EmptyChamber(CoxautError, ValueError):
    """The ample class lies in no orbit cone."""
    exit_code = 5

###################################
## Budgets                       ##
###################################

class Budget(object):
    """
    Resource limits for the exact computations, with usage counters.

    The counters accumulate over every computation the budget is handed to,
    so one budget per command gives the totals reported in results.
    """
    def __init__(self, max_pairs=20000, max_degree=40, max_afaces=4096,
                 hilbert_max_degree=64):
        """
        Instantiate a Budget.

        Parameters
        ----------
        max_pairs: `int`, optional
           Maximum number of critical pairs treated in one Groebner basis run.
        max_degree: `int`, optional
           Maximum total degree of any S-polynomial lcm.
        max_afaces: `int`, optional
           Maximum number of candidate faces tested in a GIT cone computation.
        hilbert_max_degree: `int`, optional
           Maximum total degree of an extreme ray or Hilbert basis element of a degree monoid.
        """
        self.max_pairs = int(max_pairs)
        self.max_degree = int(max_degree)
        self.max_afaces = int(max_afaces)
        self.hilbert_max_degree = int(hilbert_max_degree)

        self.pairs_used = 0
        self.max_degree_seen = 0
        self.groebner_calls = 0
        self.afaces_tested = 0

    def start_groebner(self):
        """Register a new Groebner basis computation; returns a pair counter."""
        self.groebner_calls += 1
        return _PairCounter(self)

    def check_degree(self, degree):
        """Raise BudgetExceeded if ``degree`` is beyond the degree budget."""
        if degree > self.max_degree_seen:
            self.max_degree_seen = degree
        if degree > self.max_degree:
            raise BudgetExceeded("Degree budget exceeded: reached degree %d > %d" %
                                 (degree, self.max_degree), witness=degree)

    def check_afaces(self, nfaces):
        """Raise BudgetExceeded if too many faces must be tested."""
        self.afaces_tested += nfaces
        if nfaces > self.max_afaces:
            raise BudgetExceeded("a-face budget exceeded: %d candidate faces > %d" %
                                 (nfaces, self.max_afaces), witness=nfaces)

    def check_hilbert_degree(self, degree):
        """Raise BudgetExceeded if the Hilbert completion is too deep."""
        if degree > self.hilbert_max_degree:
            raise BudgetExceeded("Hilbert basis budget exceeded: total degree %d > %d" %
                                 (degree, self.hilbert_max_degree), witness=degree)

    def usage(self):
        """
        Get the usage counters as a plain dict.

        Returns
        -------
        usage: `dict`
        """
        return {'groebner_calls': self.groebner_calls,
                'pairs_used': self.pairs_used,
                'max_degree_seen': self.max_degree_seen,
                'afaces_tested': self.afaces_tested,
                'max_pairs': self.max_pairs,
                'max_degree': self.max_degree}


class _PairCounter(object):
    def __init__(self, budget):
        self.budget = budget
        self.count = 0

    def tick(self):
        self.count += 1
        self.budget.pairs_used += 1
        if self.count > self.budget.max_pairs:
            raise BudgetExceeded("Pair budget exceeded: more than %d critical pairs" %
                                 (self.budget.max_pairs), witness=self.count)


def default_budget(budget):
    """Return ``budget``, or a fresh default Budget when it is None."""
    if budget is None:
        return Budget()
    return budget
