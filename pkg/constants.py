"""
Constantes et configurations pour Edit Distance Lab
"""

# Étiquette vide (transitions ε) dans les automates et transducteurs
EPSILON = ''

# Format texte Grail des automates
GRAIL_FORMAT = {
    'start_marker': '(START)',
    'start_arrow': '|-',
    'final_marker': '(FINAL)',
    'final_arrow': '-|',
    'epsilon_token': '@epsilon',
    'comment_prefix': '#'
}

# Paramètres par défaut
DEFAULT_SETTINGS = {
    'algorithm': 'best',
    'prune_diagonals': False,
    'oracle_max_len': 8,
    'bench_timeout': 60.0,
    'bench_warmup': True,
    'deadline_check_every': 4096
}

# Algorithmes disponibles (nom CLI -> libellé des tableaux de temps)
ALGORITHMS = {
    'detect': 'ErrDetection',
    'correct': 'ErrCorrection',
    'first': 'FirstInpAlter',
    'next': 'NextInpAlter',
    'best': 'BestInpAlter'
}

# Familles d'automates de test
FAMILIES = {
    'a': 'A',
    'b': 'B'
}

# Bornes de sécurité
LIMITS = {
    'shortest_words_factor': 2,     # longueur max = 2·|Q| + 1
    'reduce_iterations_power': 2,   # au plus |h|² réécritures
    'family_min_n': 2
}

# Codes de sortie de la CLI
EXIT_CODES = {
    'ok': 0,
    'usage': 2,
    'too_few_words': 3,
    'timeout': 4
}

# Messages CLI
CLI_MESSAGES = {
    'too_few_words': "language must contain at least two words",
    'timeout': "⏱️ Temps limite dépassé",
    'parse_error': "❌ Fichier NFA invalide",
    'file_error': "❌ Impossible de lire le fichier",
    'bench_written': "✅ Résultats écrits dans"
}

# En-tête du CSV de benchmark
BENCH_CSV_HEADER = ['family', 'n', 'states', 'algorithm', 'result', 'wall_time_s', 'timed_out']

# Format des journaux
LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'
