from .service import (check_agreement,
                      evaluate,
                      evaluate_both_and_compare)
