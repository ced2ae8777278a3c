"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import json
import sys
import jsonschema

CONFIG_ERROR_EXIT = 2

_GUARD = {"type": "integer", "minimum": 1}

CONFIG_SCHEMA = {
    "type"       : "object",
    "required"   : ["system", "modules"],
    "properties" : {
        "system"  : {
            "type"       : "object",
            "properties" : {
                "parallelism" : {"type": ["integer", "null"], "minimum": 1},
                "cache_dir"   : {"type": "string"},
                "progress"    : {"type": "boolean"}
            }
        },
        "modules" : {
            "type"       : "object",
            "properties" : {
                "logger"     : {
                    "type"       : "object",
                    "properties" : {
                        "destination" : {
                            "anyOf" : [
                                {"enum": ["stderr", "stdout", "file"]},
                                {"type": "array", "items": {"enum": ["stderr", "stdout", "file"]}}
                            ]
                        },
                        "path"  : {"type": "string"},
                        "level" : {"enum": ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]}
                    }
                },
                "cycleIndex" : {
                    "type"       : "object",
                    "properties" : {
                        "enumeration_guard" : _GUARD,
                        "partition_guard"   : _GUARD,
                        "commutant_guard"   : _GUARD
                    }
                },
                "census"     : {
                    "type"       : "object",
                    "properties" : {
                        "bruteforce_guard"     : _GUARD,
                        "raised_guard"         : _GUARD,
                        "series_order_limit"   : _GUARD,
                        "reference_table_path" : {"type": "string"},
                        "monte_carlo_seed"     : {"type": "integer", "minimum": 0},
                        "limit_bits"           : _GUARD
                    }
                }
            }
        }
    }
}

class ConfigLoader:
    """
    Loads, parses, and validates the configuration from a JSON file.
    The result is stored as an instance attribute to avoid
    multiple reads.
    """
    def __init__(self, config_path="config.json"):
        """
        Initializes the configuration loader.

        Args:
            config_path (str): The path to the JSON configuration file.
        """
        self._config_path = config_path
        self._config      = None
        self._load()

    def _load(self):
        """
        Private method to load and validate the configuration.
        Terminates the application with the usage exit code in case of
        critical errors.
        """
        try:
            with open(self._config_path, 'r') as f:
                config_data = json.load(f)
        except FileNotFoundError:
            print(f"CRITICAL ERROR: The configuration file '{self._config_path}' was not found.", file=sys.stderr)
            sys.exit(CONFIG_ERROR_EXIT)
            return
        except json.JSONDecodeError as e:
            print(f"CRITICAL ERROR: The configuration file '{self._config_path}' is not a valid JSON file.", file=sys.stderr)
            print(f"Error details: {e}", file=sys.stderr)
            sys.exit(CONFIG_ERROR_EXIT)
            return
        except Exception as e:
            print(f"CRITICAL ERROR: An unexpected error occurred while reading '{self._config_path}'.", file=sys.stderr)
            print(f"Details: {e}", file=sys.stderr)
            sys.exit(CONFIG_ERROR_EXIT)
            return

        if not isinstance(config_data, dict):
            print(f"CRITICAL ERROR: The configuration file '{self._config_path}' does not hold a JSON object.", file=sys.stderr)
            sys.exit(CONFIG_ERROR_EXIT)
            return

        # Validation for the presence of main keys
        for key in CONFIG_SCHEMA["required"]:
            if key not in config_data:
                print(f"CRITICAL ERROR: The required key '{key}' is missing from the configuration file.", file=sys.stderr)
                sys.exit(CONFIG_ERROR_EXIT)
                return

        try:
            jsonschema.validate(config_data, CONFIG_SCHEMA)
        except jsonschema.ValidationError as e:
            location = "/".join(str(p) for p in e.absolute_path) or "<root>"
            print(f"CRITICAL ERROR: Invalid configuration at '{location}': {e.message}", file=sys.stderr)
            sys.exit(CONFIG_ERROR_EXIT)
            return

        self._config = config_data

    def get_config(self):
        """
        Returns the loaded configuration dictionary.

        Returns:
            dict: The complete configuration.
        """
        return self._config
