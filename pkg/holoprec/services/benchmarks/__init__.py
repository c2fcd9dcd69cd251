from .service import (fit_scaling,
                      iterate_series,
                      read_csv,
                      read_json,
                      run_series,
                      to_record,
                      write_csv,
                      write_json)
