"""Tasks for Mori dream spaces: aut-mds, git-cone, veronese.
"""
from ..polyring import minimalize_presentation
from ..mds import CoxInput, git_cone, list_a_faces, sigma_of_lambda, aut_x, veronese
from ..autgraded import aut_omega
from ..utilities import ProblemParseError
from .coxauttask import CoxautTask, format_hom, hom_to_list
from .autringtask import check_input


def cone_to_dict(cone):
    return {'rays': [list(r) for r in cone.rays],
            'lineality': [list(l) for l in cone.lineality],
            'facets': [list(f) for f in cone.facets],
            'equations': [list(e) for e in cone.equations]}


def parse_subgroup(group, text):
    """
    Parse K' generators from ``"1 0; 0 2"`` style text.

    Returns
    -------
    gens: `list`
       GroupElements; empty for the zero subgroup.
    """
    if text is None:
        return []
    if not isinstance(text, str):
        return [group.parse_element(v) for v in text]
    parts = [p.strip() for p in text.split(';')]
    return [group.parse_element(p) for p in parts if p]


class GitConeTask(CoxautTask):
    """
    Compute the GIT chamber of the ample class.
    """

    command = 'git-cone'

    def _run(self, doc):
        logger = self.config.logger
        ring, ideal, ample, _ = self._require_ample()
        check_input(ring, ideal)
        cox = CoxInput(ring, ideal, ample)
        faces = list_a_faces(cox, budget=self.budget, nproc=self.config.nproc, logger=logger)
        cone = git_cone(cox, budget=self.budget, nproc=self.config.nproc, logger=logger)
        sigmas = sigma_of_lambda(cone, aut_omega(ring, logger=logger))
        names = ring.names
        doc.add_section("a-faces", ["{%s}" % (", ".join(names[i] for i in f.gamma)) for f in faces])
        doc.add_section("chamber", cone.describe())
        doc.add_section("chamber symmetries",
                        ["%d: %s" % (i + 1, format_hom(s)) for i, s in enumerate(sigmas)])
        doc.set_output('a_faces', [[names[i] for i in f.gamma] for f in faces])
        doc.set_output('chamber', cone_to_dict(cone))
        doc.set_output('sigma', [hom_to_list(s) for s in sigmas])


class VeroneseTask(CoxautTask):
    """
    Present the Veronese subalgebra of the degrees in a subgroup K'.
    """

    command = 'veronese'

    def __init__(self, problemfile, subgroup=None, **kwargs):
        super(VeroneseTask, self).__init__(problemfile, **kwargs)
        self.subgroup = subgroup

    def _run(self, doc):
        ring, ideal, _, _ = self.config.build()
        ideal.generator_degrees()
        gens = parse_subgroup(ring.group, self.subgroup)
        pres = veronese(ring.poly_ring, ring.degrees, ring.group, ideal=ideal, subgroup=gens,
                        budget=self.budget, logger=self.config.logger)
        doc.add_section("subgroup", [str(g) for g in gens] or ["0"])
        doc.add_section("generators", ["%s = %s" % (n, m) for n, m in pres.monomial_table()])
        doc.add_section("relations", pres.relations() or ["(none)"])
        doc.set_output('subgroup', [list(g.vec) for g in gens])
        doc.set_output('generators', [list(mu) for mu in pres.generators])
        doc.set_output('monomials', dict(pres.monomial_table()))
        doc.set_output('relations', pres.relations())


class AutMdsTask(CoxautTask):
    """
    Compute the automorphism group of a Mori dream space from its Cox ring.
    """

    command = 'aut-mds'

    def _run(self, doc):
        logger = self.config.logger
        ring, ideal, ample, chamber = self._require_ample()
        check_input(ring, ideal)
        S, I, eliminated = minimalize_presentation(ring, ideal, logger=logger)
        if S.nvars == 0:
            raise ProblemParseError("No variables left after minimalizing the presentation")
        cox = CoxInput(S, I, ample)
        result = aut_x(cox, chamber=chamber, budget=self.budget, nproc=self.config.nproc,
                       logger=logger)
        aut = result.aut_hat
        hopf = result.presentation

        doc.add_section("chamber", aut.chamber.describe())
        doc.add_section("chamber symmetries",
                        ["%d: %s" % (i + 1, format_hom(s)) for i, s in enumerate(aut.sigmas)])
        doc.add_section("total coordinate space automorphisms", aut.group.describe())
        doc.add_section("invariants",
                        ["total coordinate space dimension: %d" % (result.hat_dimension),
                         "dimension: %d" % (result.dimension),
                         "components: %s" % (str(result.components)),
                         "gamma order: %d" % (result.gamma.order),
                         "degree preserving part is H: %s" % (result.caut_is_h)])
        doc.add_section("hopf algebra generators",
                        ["%s = %s" % (n, m) for n, m in hopf.monomial_table()])
        doc.add_section("hopf algebra relations", hopf.relations() or ["(none)"])

        doc.set_output('eliminated', [list(e) for e in eliminated])
        doc.set_output('chamber', cone_to_dict(aut.chamber))
        doc.set_output('sigma', [hom_to_list(s) for s in aut.sigmas])
        doc.set_output('group', aut.group.to_dict())
        doc.set_output('hat_dimension', result.hat_dimension)
        doc.set_output('dimension', result.dimension)
        doc.set_output('components', result.components.to_dict())
        doc.set_output('gamma_order', result.gamma.order)
        doc.set_output('caut_equals_h', result.caut_is_h)
        doc.set_output('hopf', {'entries': [[r + 1, c + 1] for r, c in hopf.entries],
                                'generators': dict(hopf.monomial_table()),
                                'relations': hopf.relations()})
