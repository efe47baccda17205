from .generator import GeneratedCase, build_case, generate_corpus, random_case
