from ._pyquif5 import AlgebraError, Problem, random_problem_text

__all__ = ["AlgebraError", "Problem", "random_problem_text"]
