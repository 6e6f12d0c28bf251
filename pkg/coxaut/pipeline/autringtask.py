"""Tasks for graded automorphisms of a ring: aut-ring, symmetries, dim-bound.
"""
from ..polyring import minimalize_presentation, generator_degrees, ideal_generator_degrees
from ..autgraded import (build_rep_basis, aut_omega, aut_ks, stab_ideal, quot_rep, gamma_group,
                         group_dimension, component_count, check_entry_homogeneous,
                         extract_permutation_symmetries, permutations_closed, dim_bound)
from .coxauttask import CoxautTask, format_hom, hom_to_list


def check_input(ring, ideal):
    """Grading diagnostics for the input; raises on the first failure."""
    diag = ring.check_effective_pointed()
    ideal.generator_degrees()
    return diag


class AutRingTask(CoxautTask):
    """
    Describe the graded automorphism group Aut_K(R) of R = S/I.
    """

    command = 'aut-ring'

    def _run(self, doc):
        logger = self.config.logger
        ring, ideal, _, _ = self.config.build()
        diag = check_input(ring, ideal)

        S, I, eliminated = minimalize_presentation(ring, ideal, logger=logger)
        if eliminated:
            doc.add_section("minimal presentation",
                            ["%s = %s" % (name, sub) for name, sub in eliminated] +
                            ["ideal: %s" % (", ".join(I.format_generators()) or "0")])
        logger.info("Working with %d variables and %d relations" % (S.nvars, len(I.generators)))

        rep = build_rep_basis(S, logger=logger)
        sigmas = aut_omega(S, logger=logger)
        base = aut_ks(S, sigmas=sigmas, rep=rep, logger=logger)
        stab = stab_ideal(S, I, rep=rep, base=base, logger=logger)
        group, qrep = quot_rep(S, I, stab, rep=rep, budget=self.budget, logger=logger)
        check_entry_homogeneous(group)

        gamma = gamma_group(group, budget=self.budget, logger=logger)
        dimension = group_dimension(group, budget=self.budget)
        components = component_count(group, budget=self.budget)
        bound = dim_bound(S, I)

        doc.add_section("generator degrees",
                        [str(w) for w in generator_degrees(S)])
        doc.add_section("representation", rep.describe())
        doc.add_section("degree symmetries",
                        ["%d: %s" % (i + 1, format_hom(s)) for i, s in enumerate(sigmas)])
        doc.add_section("automorphism group", group.describe())
        doc.add_section("invariants",
                        ["dimension: %d" % (dimension),
                         "components: %s" % (str(components)),
                         "gamma order: %d" % (gamma.order),
                         "gamma abelian: %s" % (gamma.is_abelian()),
                         "dimension bound: %d" % (bound)])

        doc.set_output('grading', diag)
        doc.set_output('eliminated', [list(e) for e in eliminated])
        doc.set_output('ideal_generator_degrees', [list(w.vec) for w in ideal_generator_degrees(I)])
        doc.set_output('degree_symmetries', [hom_to_list(s) for s in sigmas])
        doc.set_output('group', group.to_dict())
        doc.set_output('quotient_dimension', qrep.k)
        doc.set_output('dimension', dimension)
        doc.set_output('components', components.to_dict())
        doc.set_output('gamma_order', gamma.order)
        doc.set_output('gamma_abelian', gamma.is_abelian())
        doc.set_output('dim_bound', bound)


class SymmetriesTask(CoxautTask):
    """
    Find the variable permutations stabilizing the ideal.
    """

    command = 'symmetries'

    def __init__(self, problemfile, sym_format=None, **kwargs):
        super(SymmetriesTask, self).__init__(problemfile, **kwargs)
        if sym_format is not None:
            self.config.sym_format = sym_format

    def export(self, perms):
        """
        Permutations as a symmetry list for Groebner fan software.

        Returns
        -------
        text: `str`
           ``{(..),(..)}`` with 0- or 1-based images.
        """
        off = 1 if self.config.sym_format == 'one' else 0
        return "{" + ",".join("(" + ",".join(str(p + off) for p in perm) + ")"
                              for perm in perms) + "}"

    def _run(self, doc):
        logger = self.config.logger
        ring, ideal, _, _ = self.config.build()
        check_input(ring, ideal)
        perms = extract_permutation_symmetries(ring, ideal, logger=logger)
        closed = permutations_closed(perms)
        off = 1 if self.config.sym_format == 'one' else 0
        doc.add_section("permutations", self.export(perms))
        doc.add_section("closure", "closed under composition: %s" % (closed))
        doc.set_output('permutations', [[p + off for p in perm] for perm in perms])
        doc.set_output('indexing', self.config.sym_format)
        doc.set_output('closed', closed)
        doc.set_output('count', len(perms))


class DimBoundTask(CoxautTask):
    """
    Upper bound on the dimension of the automorphism group.
    """

    command = 'dim-bound'

    def _run(self, doc):
        ring, ideal, _, _ = self.config.build()
        check_input(ring, ideal)
        S, I, _ = minimalize_presentation(ring, ideal, logger=self.config.logger)
        bound = dim_bound(S, I)
        mds_bound = dim_bound(S, I, mds=True)
        doc.add_section("bounds",
                        ["graded automorphisms: %d" % (bound),
                         "variety (minus free rank %d): %d" % (S.group.free_rank, mds_bound)])
        doc.set_output('dim_bound', bound)
        doc.set_output('mds_dim_bound', mds_bound)
