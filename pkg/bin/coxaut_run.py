#!/usr/bin/env python

import sys
import argparse
import coxaut

TASKS = {'aut-ring': coxaut.pipeline.AutRingTask,
         'aut-mds': coxaut.pipeline.AutMdsTask,
         'symmetries': coxaut.pipeline.SymmetriesTask,
         'git-cone': coxaut.pipeline.GitConeTask,
         'veronese': coxaut.pipeline.VeroneseTask,
         'dim-bound': coxaut.pipeline.DimBoundTask}


def make_parser():
    parser = argparse.ArgumentParser(description='Automorphism groups of graded rings and Mori dream spaces')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    for name, task in TASKS.items():
        p = sub.add_parser(name, help=task.__doc__.strip().split('\n')[0])
        p.add_argument('problemfile', nargs='?', default=None,
                       help='YAML problem file')
        p.add_argument('-c', '--problemfile', dest='problemfile_opt', action='store', type=str,
                       default=None, help='YAML problem file')
        p.add_argument('--budget-pairs', action='store', type=int, default=None,
                       help='Maximum critical pairs per Groebner basis')
        p.add_argument('--budget-degree', action='store', type=int, default=None,
                       help='Maximum degree reached in Groebner bases')
        p.add_argument('--chamber-file', action='store', type=str, default=None,
                       help='YAML file with a trusted GIT chamber')
        p.add_argument('--machine-output', action='store', type=str, default=None,
                       help='Write the machine section to this file')
        p.add_argument('-n', '--nproc', action='store', type=int, default=None,
                       help='Number of processes for a-face tests')
        p.add_argument('-q', '--quiet', action='store_true',
                       help='Do not print progress messages')
        if name == 'symmetries':
            p.add_argument('--sym-format', action='store', choices=['zero', 'one'], default=None,
                           help='Index permutations from zero or one')
        if name == 'veronese':
            p.add_argument('--subgroup', action='store', type=str, default=None,
                           help='Generators of the subgroup, separated by ";"')
    return parser


if __name__ == '__main__':
    parser = make_parser()
    args = parser.parse_args()

    problemfile = args.problemfile_opt if args.problemfile_opt is not None else args.problemfile
    if problemfile is None:
        parser.error('a problem file is required')

    kwargs = dict(budget_pairs=args.budget_pairs, budget_degree=args.budget_degree,
                  chamber_file=args.chamber_file, nproc=args.nproc, quiet=args.quiet)
    if args.command == 'symmetries':
        kwargs['sym_format'] = args.sym_format
    if args.command == 'veronese':
        kwargs['subgroup'] = args.subgroup

    try:
        task = TASKS[args.command](problemfile, **kwargs)
        doc = task.run()
    except coxaut.CoxautError as err:
        print("error[%d] %s: %s" % (err.exit_code, type(err).__name__, str(err)), file=sys.stderr)
        sys.exit(err.exit_code)

    sys.stdout.write(doc.render())
    if args.machine_output is not None:
        doc.write_machine(args.machine_output)
