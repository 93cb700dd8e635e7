from ._core import (
    BudgetExceeded,
    Error,
    Genus0N1Unsupported,
    InvalidArgument,
    NotACharacter,
    ParseError,
    betti,
    dim_irrep,
    euler_series,
    mixed_table,
    mixed_table_json,
    oracle_dims,
    oracle_table,
    q_series,
    run_cli,
    sl_hook_dim,
    weyl_dim,
)


def verify(genus, max_n, reps=False):
    """True when the closed formula and the DGA oracle agree for n = 0..max_n."""
    args = ["verify", "--genus", str(genus), "--max-n", str(max_n)]
    if reps:
        args.append("--reps")
    code, _, err = run_cli(args)
    if code == 2:
        raise InvalidArgument(err.strip())
    return code == 0


__all__ = [name for name in dir() if not name.startswith("_")]
