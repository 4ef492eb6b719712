from cli.command_builder import COMMANDS
from cli.writers import Table
from param_map import chain_residuals, level_map_table, m_params_at
from spectrum import compare_models, find_levels, sweep_levels


@COMMANDS.register("spectrum")
def run_spectrum(cmd, logger):
    levels = find_levels(cmd.matching, cmd.well, cmd.levels, tol=cmd.root_tol)
    logger.info(f"spectrum: {len(levels)} levels for a={cmd.a} b={cmd.b} c={cmd.c} mass={cmd.mass}")
    return Table(("n", "k", "E"), [(lvl.n, lvl.k, lvl.energy) for lvl in levels])


@COMMANDS.register("params")
def run_params(cmd, logger):
    rows = level_map_table(cmd.matching, cmd.well, cmd.levels)
    logger.info(f"params: {len(rows)} rows")
    return Table(("n", "k", "m1", "phi", "m0", "m3"), rows)


@COMMANDS.register("audit")
def run_audit(cmd, logger):
    p, cfg = cmd.matching, cmd.well
    k = cmd.k
    if k is None:
        k = find_levels(p, cfg, 1, tol=cmd.root_tol)[0].k
        logger.debug(f"audit at the first level, k={k!r}")
    report = chain_residuals(m_params_at(p, cfg, k), p, cfg, k)
    logger.info(
        f"audit: {len(report.records)} records at k={k!r}, "
        f"normalization residual {report.normalization_residual:.3e}"
    )
    return report


@COMMANDS.register("compare")
def run_compare(cmd, logger):
    rows = compare_models(cmd.matching, cmd.well, cmd.levels)
    logger.info(f"compare: largest difference {max(abs(r[3]) for r in rows):.3e}")
    return Table(("n", "k_eq62", "k_dirichlet", "diff"), rows)


@COMMANDS.register("figure1")
def run_figure1(cmd, logger):
    points = sweep_levels(
        cmd.matching,
        cmd.well,
        cmd.sweep,
        cmd.levels,
        workers=cmd.workers,
        progress=cmd.log_level == "DEBUG",
    )
    header = ("sweep_value",) + tuple(f"E{n}" for n in range(1, cmd.levels + 1))
    logger.info(f"figure1: {len(points)} sweep points over {cmd.sweep.variable}")
    return Table(header, [(value, *energies) for value, energies in points])
