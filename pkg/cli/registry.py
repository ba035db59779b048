from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from cohomology.errors import InputError


@dataclass(frozen=True)
class Command:
    """A CLI command: how to read its input and how to run it"""
    name: str
    help: str
    input_type: type
    handler: Callable
    add_arguments: Callable
    defaults: Optional[Callable[[], dict]] = None


class CommandRegistry:
    def __init__(self):
        self.registry: Dict[str, Command] = {}

    def register(self, command: Command) -> Command:
        if command.name in self.registry:
            raise ValueError(f"command {command.name!r} is already registered")
        self.registry[command.name] = command
        return command

    def command(self, name: str, help: str, input_type: type, add_arguments: Callable,
                defaults: Optional[Callable[[], dict]] = None):
        """Decorator form of register"""
        def decorate(handler: Callable) -> Callable:
            self.register(Command(name, help, input_type, handler, add_arguments, defaults))
            return handler
        return decorate

    def lookup(self, name: Optional[str]) -> Command:
        if name not in self.registry:
            raise InputError(
                f"unknown command {name!r}; choose one of {', '.join(self.names())}", "command"
            )
        return self.registry[name]

    def names(self) -> List[str]:
        return list(self.registry)


# Global registry instance
command_registry = CommandRegistry()
