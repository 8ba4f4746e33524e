import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from core.errors import ConfigurationError

from .scenario import Scenario, builtin_presets


class ScenarioManager:
    """
    Stores scenario files and resolves names against the built-in presets
    """

    def __init__(self, base_path: Optional[Union[str, Path]] = None):
        """
        Initialize scenario manager

        Args:
            base_path: Directory for scenario files, defaults to <project>/scenarios
        """
        if base_path is None:
            base_path = Path(__file__).parent.parent.parent / "scenarios"

        self.scenarios_path = Path(base_path)
        self.presets: Dict[str, Scenario] = builtin_presets()

        self.logger = logging.getLogger(__name__)

    def get_scenario_path(self, name: str) -> Path:
        """Path of the scenario file for a name"""
        return self.scenarios_path / f"{name}.json"

    def save_scenario(self, scenario: Scenario, path: Optional[Union[str, Path]] = None) -> bool:
        """
        Write a scenario as JSON

        Args:
            scenario: Scenario to store
            path: Target file, defaults to scenarios/<name>.json

        Returns:
            bool: Success status
        """
        target = Path(path) if path is not None else self.get_scenario_path(scenario.name)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            with open(target, 'w') as f:
                json.dump(scenario.to_dict(), f, indent=4)

            self.logger.info(f"Saved scenario {scenario.name} to {target}")
            return True

        except OSError as e:
            self.logger.error(f"Error saving scenario {scenario.name}: {e}")
            return False

    def load_scenario(self, name_or_path: Union[str, Path]) -> Scenario:
        """
        Resolve a preset name, a stored scenario name or a JSON file path

        Raises:
            ConfigurationError: nothing matches, or the file is not a valid scenario
        """
        key = str(name_or_path)
        if key in self.presets:
            return self.presets[key]

        candidates = [Path(name_or_path), self.get_scenario_path(key)]
        scenario_file = next((p for p in candidates if p.is_file()), None)
        if scenario_file is None:
            raise ConfigurationError(
                f"Scenario not found: {key} (not a preset, not a file under {self.scenarios_path})"
            )

        try:
            with open(scenario_file, 'r') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigurationError(f"Cannot read scenario file {scenario_file}: {e}") from e

        scenario = Scenario.from_dict(data)
        self.logger.info(f"Loaded scenario {scenario.name} from {scenario_file}")
        return scenario

    def list_presets(self) -> List[Scenario]:
        return [self.presets[name] for name in sorted(self.presets)]

    def list_scenario_files(self) -> List[str]:
        """Names of the stored scenario files"""
        if not self.scenarios_path.is_dir():
            return []
        return sorted(f.stem for f in self.scenarios_path.glob('*.json') if f.is_file())

    def export_preset(self, name: str, path: Union[str, Path]) -> bool:
        """
        Write a built-in preset as a scenario file

        Raises:
            ConfigurationError: unknown preset
        """
        if name not in self.presets:
            raise ConfigurationError(
                f"Unknown preset {name}, available: {', '.join(sorted(self.presets))}"
            )
        return self.save_scenario(self.presets[name], path)
