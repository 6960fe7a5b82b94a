"""Finite-ring computational algebra: constructions, unit-square
classification, and a corpus fact-checking harness."""

__version__ = "0.1.0"

from .core import (CapExceeded, DEFAULT_MAX_ORDER, ElementSet, FiniteRing,
                   Ideal, RingError, Validation, center, characteristic,
                   corner_ring, embed_int, idempotents, ideal_generated,
                   is_good_subring, is_nilpotent_ideal, jacobson_radical,
                   mod_radical, nilpotents, prime_radical, quasi_nilpotents,
                   quotient, subring_ring, unit_inverses, units, validate)
from .constructions import (AbelianGroup, BimodulePairing, FiniteGroup,
                            abelian_of, augmentation_ideal, augmentation_map,
                            builtin_group, cyclic_group, direct_product,
                            finite_field, formal_triangular, group_exponent,
                            group_product, group_ring, is_p_group, is_prime,
                            matrix_ring, morita_ring, trivial_extension,
                            truncated_poly, upper_triangular, validate_group,
                            zero_module, zmod)
from .classify import (ClassReport, FLAG_ORDER, classify, fingerprint,
                       is_2uq_strong_form, is_clean, is_exchange,
                       is_semiregular, regular_family, two_uq, unit_property)
from .dsl import (SpecSemanticError, SpecSyntaxError, build_ring, parse_spec,
                  print_spec)
from .harness import (CheckResult, Corpus, CorpusEntry, check_ids,
                      check_statement, corpus_text, generate_corpus,
                      load_corpus, run_all, run_check)
