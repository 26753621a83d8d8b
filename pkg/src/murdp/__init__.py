"""murdp: exact local models of mu_n group-scheme actions on rational
double points in positive characteristic, with quotients, blow-ups,
multiplicity recursion, a built-in classification catalog, and global
surface analysis."""

__version__ = "0.1.0"
