"""Hybrid algorithm recognition: static filter patterns + LLM classification.

The package detects algorithm implementations (Bubble Sort, Binary Search,
Transpose Matrix, ...) in Java method corpora by combining cheap static
pre-filters (keyword groups and structural AST patterns) with an LLM
classifier, and ships the evaluation harness used to measure the pipeline.
"""

__version__ = "0.1.0"

ALGORITHMS = (
    "prime_factors",
    "gcd",
    "fibonacci",
    "palindrome",
    "bubble_sort",
    "binary_search",
    "transpose_matrix",
)
