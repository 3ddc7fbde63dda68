# engine - Digraphs, cycle census, colorings and their verifiers
