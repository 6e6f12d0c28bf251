"""Base class for the coxaut command tasks.
"""
from ..configuration import ProblemFile, read_yaml
from ..results import ResultDocument
from ..utilities import ProblemParseError


def format_hom(sigma):
    """One-line text for a degree symmetry matrix."""
    return "[" + "; ".join(" ".join(str(int(x)) for x in row) for row in sigma.matrix.tolist()) + "]"


def hom_to_list(sigma):
    return [[int(x) for x in row] for row in sigma.matrix.tolist()]


class CoxautTask(object):
    """
    Shared setup of the command tasks: problem file, budget and result document.
    """

    command = None

    def __init__(self, problemfile, budget_pairs=None, budget_degree=None, chamber_file=None,
                 nproc=None, quiet=False):
        """
        Instantiate a task.

        Parameters
        ----------
        problemfile: `str` or `coxaut.ProblemFile`
           Problem yaml filename, or an already loaded problem.
        budget_pairs: `int`, optional
           Override the critical pair budget of the problem file.
        budget_degree: `int`, optional
           Override the degree budget of the problem file.
        chamber_file: `str`, optional
           yaml file with a ``chamber`` key replacing the problem's chamber.
        nproc: `int`, optional
           Override the number of processes.
        quiet: `bool`, optional
           Silence progress messages.
        """
        if isinstance(problemfile, ProblemFile):
            self.config = problemfile
        else:
            self.config = ProblemFile(problemfile, quiet=quiet)
        if chamber_file is not None:
            d = read_yaml(chamber_file)
            if 'chamber' not in d:
                raise ProblemParseError("Chamber file %s has no chamber key" % (chamber_file))
            self.config.set_chamber(d['chamber'])
        if nproc is not None:
            self.config.nproc = nproc
        self.budget = self.config.budget(pairs=budget_pairs, degree=budget_degree)

    def _start(self):
        self.config.logger.start(self.command)
        return ResultDocument(self.command, self.config.input_hash())

    def _finish(self, doc):
        doc.budget = self.budget.usage()
        self.config.logger.stop(self.command)
        return doc

    def _require_ample(self):
        ring, ideal, ample, chamber = self.config.build()
        if ample is None:
            raise ProblemParseError("Command %s needs an ample_class in the problem file" %
                                    (self.command))
        return ring, ideal, ample, chamber

    def run(self):
        """
        Run the task.

        Returns
        -------
        doc: `coxaut.ResultDocument`
        """
        doc = self._start()
        self._run(doc)
        return self._finish(doc)

    def _run(self, doc):
        raise NotImplementedError("Must be implemented by subclass")
