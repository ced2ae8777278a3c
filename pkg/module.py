"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import os

class Module:
    """
    Base class for all computational components.
    Holds the component name, its configuration sections and the shared
    Logger used by log().
    """
    def __init__(self,name,moduleConfig=None,systemConfig=None,logger=None):
        """
        Initializes the Module.

        Args:
            name (str): The unique name of the component.
            moduleConfig (dict): The component's section of 'modules' in config.json.
            systemConfig (dict): Dictionary with system-wide parameters.
            logger (Logger): Shared Logger instance; None disables logging.
        """
        self.name         = name
        self.config       = moduleConfig or {}
        self.systemConfig = systemConfig or {}
        self.logger       = logger

    def parallelism(self):
        """
        Number of worker processes for data-parallel enumerations.

        Returns:
            int: The configured value, or the machine core count when unset.
        """
        workers = self.systemConfig.get("parallelism")
        if workers is None:
            workers = os.cpu_count() or 1
        return max(1,int(workers))

    def progress(self):
        """
        Returns:
            bool: True when progress bars are enabled.
        """
        return bool(self.systemConfig.get("progress",False))

    def log(self,level,message):
        """
        Sends a log message to the Logger component.

        Args:
            level (str): The log level (e.g., "INFO","ERROR","DEBUG").
            message (str): The text of the log message.
        """
        if self.logger is None:
            return
        entry = {
            "Sender"      : self.name,
            "Destination" : "Logger",
            "Message"     : {
                                "type"    : "LogMessage",
                                "payload" : {
                                                "level"   : level,
                                                "message" : message
                                            }
                            }
        }
        self.logger.handleMessage(entry)
