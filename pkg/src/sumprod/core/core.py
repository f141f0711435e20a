from __future__ import annotations

import importlib
from typing import TYPE_CHECKING, cast

from sumprod.config import Config

if TYPE_CHECKING:
    # service modules import Service from here
    from sumprod.core.modules.oracle.service import OracleService
    from sumprod.core.modules.stream.service import StreamService


class Service:
    """Base class for services that need configuration or other services."""

    def __init__(self) -> None:
        self._core: Core | None = None

    @property
    def core(self) -> Core:
        """Get the core application context."""
        if self._core is None:
            raise RuntimeError("Core not set for service")
        return self._core

    def set_core(self, core: Core) -> None:
        """Set the core application context."""
        self._core = core


class Services:
    """Service registry that imports and initializes services from a fixed configuration."""

    stream: StreamService
    oracle: OracleService

    def __init__(self) -> None:
        self._services: list[Service] = []

        # Service configuration: (attribute_name, module_path, class_name)
        service_configs = [
            ("stream", "sumprod.core.modules.stream.service", "StreamService"),
            ("oracle", "sumprod.core.modules.oracle.service", "OracleService"),
        ]

        for attr_name, module_path, class_name in service_configs:
            module = importlib.import_module(module_path)
            service_class = cast(type[Service], getattr(module, class_name))
            service_instance = service_class()
            setattr(self, attr_name, service_instance)
            self._services.append(service_instance)

    def set_core(self, core: Core) -> None:
        """Set core reference for all services."""
        for service in self._services:
            service.set_core(core)


class Core:
    """Container providing config and all service instances."""

    config: Config
    services: Services

    def __init__(self, config: Config) -> None:
        self.config = config
        self.services = Services()
        self.services.set_core(self)
