"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import argparse
import sys

from cli          import CLI
from configLoader import ConfigLoader
from logger       import Logger

def main(argv=None):
    """
    Main entry point of the application.
    Loads the configuration named by --config (default 'config.json'),
    starts the Logger, runs one CLI subcommand and returns its exit code.
    """
    pre = argparse.ArgumentParser(add_help=False,allow_abbrev=False)
    pre.add_argument("--config",default="config.json")
    known,rest = pre.parse_known_args(sys.argv[1:] if argv is None else argv)

    config = ConfigLoader(known.config).get_config()
    logger = Logger(config["modules"].get("logger",{}),config["system"])
    logger.onStart()
    try:
        return CLI(config,logger).run(rest)
    finally:
        logger.onStop()

if __name__ == "__main__":
    sys.exit(main())
