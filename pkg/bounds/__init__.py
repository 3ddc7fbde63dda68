# bounds - Pluggable corollary bounds (classical chromatic bounds as concrete colorings)
