MODES = ['classic', 'trunc']
BOUND_MODES = ['certified', 'heuristic']
FORMATS = ['decimal', 'dyadic', 'json']
BENCH_FORMATS = ['csv', 'json']
