from core.models.sweep_definition import SweepDefinition


class CheckRegistry:
    def __init__(self) -> None:
        self.definitions: dict[str, SweepDefinition] = {}

    def register(self, definition: SweepDefinition) -> None:
        if definition.name in self.definitions:
            raise ValueError(f"Check already registered: {definition.name}")
        self.definitions[definition.name] = definition

    def get(self, name: str) -> SweepDefinition:
        try:
            return self.definitions[name]
        except KeyError as exc:
            raise ValueError(f"Unknown check id: {name}") from exc

    def names(self) -> list[str]:
        return list(self.definitions)
