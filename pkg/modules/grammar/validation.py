from dataclasses import dataclass

from .schemas import Grammar, Rule


@dataclass(frozen=True)
class EarleyValidation:
    ok: bool
    offending: tuple[Rule, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_for_earley(g: Grammar) -> EarleyValidation:
    """The classic engine accepts only ε-free grammars; list every ε-rule otherwise."""
    offending = g.epsilon_rules
    return EarleyValidation(ok=not offending, offending=offending)
