"""Problem file class for coxaut.

A problem file is a yaml document describing a graded ring S = K[T_1..T_r], a
homogeneous ideal I and, for Mori dream space computations, an ample class.
"""
import copy
import hashlib
import os
import re

import yaml

from .abelian import AbelianGroup
from .cones import RationalCone
from .polyring import CoefficientField, GradedPolyRing, Ideal
from .utilities import Logger, Budget, ProblemParseError

_MOD_RE = re.compile(r'^(?P<entries>.*?)\s+mod\s+(?P<modulus>-?\d+)\s*$')


class ConfigField(object):
    """
    A field of a problem file that can specify a default and be validated.

    Values are stored on the instance, so several problem files can be loaded
    at the same time.
    """

    def __init__(self, default=None, required=False, isList=False, array_length=None):
        """
        Instantiate a ConfigField

        Parameters
        ----------
        default: any type, optional
           The default value for the field.  Default is None.
        required: `bool`, optional
           Is the field required to be set?  Default is False.
        isList: `bool`, optional
           Is the field a list type?  Default is False.
        array_length: `int`, optional
           Required list length for validation.  Default is None.
        """
        self._default = list(default) if (isList and default is not None) else default
        self._required = required
        self._isList = isList
        self._array_length = array_length
        self.name = None

    def __set_name__(self, owner, name):
        self.name = name

    def __get__(self, obj, type=None):
        if obj is None:
            return self
        return obj.__dict__.get(self.name, copy.copy(self._default))

    def __set__(self, obj, value):
        if self._isList and value is not None:
            if isinstance(value, (str, bytes)) or not hasattr(value, '__iter__'):
                raise ProblemParseError("Problem field %s must be a list" % (self.name))
            value = list(value)
        obj.__dict__[self.name] = value

    def reset(self, obj):
        """Reset the value on ``obj`` to the default."""
        obj.__dict__.pop(self.name, None)

    def validate(self, obj):
        """
        Validate the field value on ``obj``.

        Raises
        ------
        ValueError: if the field does not validate.
        """
        value = self.__get__(obj)
        if self._required and value is None:
            raise ValueError("Required ConfigField %s is not set" % (self.name))
        if value is not None and self._isList and self._array_length is not None:
            if len(value) != self._array_length:
                raise ValueError("ConfigField %s has the wrong length (%d != %d)" %
                                 (self.name, len(value), self._array_length))
        return True


def read_yaml(filename):
    """
    Read a yaml file into a dictionary.

    Parameters
    ----------
    filename: `str`
       File to read

    Returns
    -------
    outdict: `dict`
       Dictionary from yaml file
    """
    try:
        with open(filename) as f:
            yaml_data = yaml.load(f, Loader=yaml.SafeLoader)
    except OSError as err:
        raise ProblemParseError("Cannot read %s: %s" % (filename, err.strerror))
    except yaml.YAMLError as err:
        raise ProblemParseError("Malformed yaml in %s: %s" % (filename, str(err).splitlines()[0]))
    if yaml_data is None:
        return {}
    if not isinstance(yaml_data, dict):
        raise ProblemParseError("Problem file %s does not hold a mapping" % (filename))
    return dict(yaml_data)


def _int_list(value, what):
    if isinstance(value, str):
        value = value.replace(',', ' ').split()
    try:
        return [int(v) for v in value]
    except (TypeError, ValueError):
        raise ProblemParseError("Cannot read integers for %s from %r" % (what, value))


def parse_degree_matrix(rows):
    """
    Parse degree matrix rows into a grading group and per-variable degrees.

    Parameters
    ----------
    rows: `list`
       Free rows as integer lists or strings, then torsion rows as strings
       ``"<entries> mod <m>"``.

    Returns
    -------
    group: `coxaut.AbelianGroup`
    columns: `list`
       One integer vector per variable, free entries first.
    """
    free_rows = []
    tors_rows = []
    moduli = []
    for i, row in enumerate(rows):
        m = _MOD_RE.match(row) if isinstance(row, str) else None
        if m is not None:
            modulus = int(m.group('modulus'))
            if modulus < 2:
                raise ProblemParseError("Torsion row %d has modulus %d < 2" % (i + 1, modulus))
            tors_rows.append(_int_list(m.group('entries'), "degree row %d" % (i + 1)))
            moduli.append(modulus)
        else:
            if tors_rows:
                raise ProblemParseError("Free degree row %d follows a torsion row" % (i + 1))
            free_rows.append(_int_list(row, "degree row %d" % (i + 1)))
    all_rows = free_rows + tors_rows
    if not all_rows:
        raise ProblemParseError("Empty degree matrix")
    ncols = len(all_rows[0])
    for i, row in enumerate(all_rows):
        if len(row) != ncols:
            raise ProblemParseError("Degree row %d has %d entries, expected %d" %
                                    (i + 1, len(row), ncols))
    group = AbelianGroup(len(free_rows), moduli)
    columns = [[row[j] for row in all_rows] for j in range(ncols)]
    return group, columns


def format_degree_matrix(group, columns):
    """Canonical string rows of a degree matrix."""
    out = []
    for i in range(group.ngens):
        entries = " ".join(str(col[i]) for col in columns)
        if i < group.free_rank:
            out.append(entries)
        else:
            out.append("%s mod %d" % (entries, group.torsion_orders[i - group.free_rank]))
    return out


class ProblemFile(object):
    """
    Problem file class for coxaut.

    This class holds a graded ring, an ideal, optional Mori dream space data
    and the computation budgets, with methods to validate them and to build
    the corresponding coxaut objects.
    """

    field = ConfigField(default='rationals', required=True)
    parameters = ConfigField(default=[], isList=True)
    variables = ConfigField(isList=True)
    degree_matrix = ConfigField(required=True, isList=True)
    ideal = ConfigField(default=[], isList=True)
    ample_class = ConfigField()
    chamber = ConfigField(isList=True)

    budget_pairs = ConfigField(default=20000, required=True)
    budget_degree = ConfigField(default=40, required=True)
    max_afaces = ConfigField(default=4096, required=True)
    hilbert_max_degree = ConfigField(default=64, required=True)
    nproc = ConfigField(default=1, required=True)
    sym_format = ConfigField(default='one', required=True)

    def __init__(self, problemfile, quiet=False):
        """
        Instantiate a ProblemFile object

        Parameters
        ----------
        problemfile: `str`
           Problem yaml filename
        quiet: `bool`, optional
           Silence the logger.  Default is False.

        Raises
        ------
        ProblemParseError:
           When the file is not a valid problem description
        """
        self._setup(read_yaml(problemfile), quiet)
        self.problempath = os.path.dirname(os.path.abspath(problemfile))
        self.problemfile = os.path.basename(problemfile)

    @classmethod
    def from_dict(cls, d, quiet=False):
        """
        Make a ProblemFile from a dictionary of problem variables.
        """
        obj = cls.__new__(cls)
        obj._setup(d, quiet)
        obj.problempath = None
        obj.problemfile = None
        return obj

    def _setup(self, d, quiet):
        self._set_vars_from_dict(d)
        self.logger = Logger(quiet=quiet)
        self._built = None
        self.validate()

    def _fields(self):
        return [(name, f) for name, f in type(self).__dict__.items() if isinstance(f, ConfigField)]

    def _set_vars_from_dict(self, d):
        for key in d:
            if key not in type(self).__dict__ or not isinstance(type(self).__dict__[key], ConfigField):
                raise ProblemParseError("Unknown problem variable: %s" % (key))
            setattr(self, key, d[key])

    def validate(self):
        """
        Validate the problem variables.

        Raises
        ------
        ProblemParseError:
           If any variable is not legal.
        """
        for name, f in self._fields():
            try:
                f.validate(self)
            except ValueError as err:
                raise ProblemParseError(str(err))

        if self.field not in ('rationals', 'rational_functions'):
            raise ProblemParseError("field must be rationals or rational_functions, not %r" %
                                    (self.field))
        if self.field == 'rationals' and self.parameters:
            raise ProblemParseError("Parameters given for field rationals")
        if self.field == 'rational_functions' and not self.parameters:
            raise ProblemParseError("field rational_functions needs parameters")
        if self.sym_format not in ('zero', 'one'):
            raise ProblemParseError("sym_format must be zero or one, not %r" % (self.sym_format))
        for name in ('budget_pairs', 'budget_degree', 'max_afaces', 'hilbert_max_degree', 'nproc'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ProblemParseError("%s must be a positive integer, got %r" % (name, value))

        self.group, self.degree_columns = parse_degree_matrix(self.degree_matrix)
        nvars = len(self.degree_columns)
        if self.variables is None:
            self.variables = ["T%d" % (i + 1) for i in range(nvars)]
        elif len(self.variables) != nvars:
            raise ProblemParseError("%d variables but %d degree matrix columns" %
                                    (len(self.variables), nvars))

    def build(self):
        """
        Build the coxaut objects described by the problem.

        Returns
        -------
        ring: `coxaut.GradedPolyRing`
        ideal: `coxaut.Ideal`
        ample_class: `coxaut.GroupElement` or None
        chamber: `coxaut.RationalCone` or None
        """
        if self._built is None:
            field = CoefficientField(self.parameters)
            ring = GradedPolyRing(self.variables, field, self.group, self.degree_columns)
            ideal = Ideal(ring, [str(g) for g in self.ideal])
            ample = None
            if self.ample_class is not None:
                ample = self.group.parse_element(self.ample_class)
            chamber = None
            if self.chamber is not None:
                chamber = self.read_chamber(self.chamber)
            self._built = (ring, ideal, ample, chamber)
        return self._built

    def read_chamber(self, rays):
        """A trusted GIT chamber from a list of rays in the free part of K."""
        vecs = [_int_list(r, "chamber ray") for r in rays]
        for v in vecs:
            if len(v) != self.group.free_rank:
                raise ProblemParseError("Chamber ray %r does not fit free rank %d" %
                                        (v, self.group.free_rank))
        return RationalCone.from_rays(vecs, self.group.free_rank)

    def set_chamber(self, rays):
        """Replace the chamber (from a chamber file)."""
        self.chamber = rays
        self._built = None

    def budget(self, pairs=None, degree=None):
        """
        Make a Budget from the budget fields.

        Parameters
        ----------
        pairs: `int`, optional
           Override budget_pairs.
        degree: `int`, optional
           Override budget_degree.
        """
        return Budget(max_pairs=pairs if pairs is not None else self.budget_pairs,
                      max_degree=degree if degree is not None else self.budget_degree,
                      max_afaces=self.max_afaces,
                      hilbert_max_degree=self.hilbert_max_degree)

    def to_dict(self):
        """
        The canonical form of the problem as a plain dict.

        Polynomials are printed in the canonical grammar and the degree matrix
        as strings, so reading the output back gives the same dict.
        """
        ring, ideal, ample, chamber = self.build()
        out = {'field': self.field,
               'parameters': list(self.parameters),
               'variables': list(self.variables),
               'degree_matrix': format_degree_matrix(self.group, self.degree_columns),
               'ideal': ideal.format_generators(),
               'budget_pairs': self.budget_pairs,
               'budget_degree': self.budget_degree,
               'max_afaces': self.max_afaces,
               'hilbert_max_degree': self.hilbert_max_degree,
               'nproc': self.nproc,
               'sym_format': self.sym_format}
        if ample is not None:
            out['ample_class'] = " ".join(str(v) for v in ample.vec)
        if chamber is not None:
            out['chamber'] = [list(r) for r in chamber.rays]
        return out

    def output_yaml(self, filename):
        """
        Output the canonical problem into a yaml file.

        Parameters
        ----------
        filename: `str`
           Output yaml filename
        """
        with open(filename, 'w') as f:
            yaml.safe_dump(self.to_dict(), stream=f, sort_keys=True, default_flow_style=False)

    def input_hash(self):
        """sha256 hex digest of the canonical yaml."""
        text = yaml.safe_dump(self.to_dict(), sort_keys=True, default_flow_style=False)
        return hashlib.sha256(text.encode('utf-8')).hexdigest()

    def copy(self):
        """
        Return a copy of the problem
        """
        return copy.copy(self)
