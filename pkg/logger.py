"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import sys
import time
import json
from module       import Module
from configLoader import ConfigLoader

LEVELS = {
    "DEBUG"    : 10,
    "INFO"     : 20,
    "WARNING"  : 30,
    "ERROR"    : 40,
    "CRITICAL" : 50
}

class Logger(Module):
    """
    Centralized logging: receives messages from the other components and
    routes them to the configured destinations (stderr, stdout, file).
    """
    def __init__(self,moduleConfig=None,systemConfig=None):
        """
        Initializes the Logger. The output destination is configured in the
        'config.json' file under 'modules.logger.destination'.

        The 'destination' parameter can be a single string or a list of
        strings, allowing for flexible combinations of output.

        Available destinations:
        - "stderr": Human readable lines on the error stream (default), so
          that report output on stdout stays clean.
        - "stdout": Human readable lines on standard output.
        - "file": JSON lines appended to the file given by 'path'.

        Entries below 'level' are dropped.
        """
        if moduleConfig is None:
            full_config  = ConfigLoader().get_config()
            moduleConfig = full_config.get("modules",{}).get("logger",{})

        super().__init__("Logger",moduleConfig,systemConfig)
        self.logger = self

        dest = self.config.get("destination","stderr")
        if isinstance(dest,str):
            self.destinations = [dest]
        else:
            self.destinations = list(dest)

        self.threshold = LEVELS.get(str(self.config.get("level","INFO")).upper(),LEVELS["INFO"])
        self.log_file  = None

    def onStart(self):
        """
        Opens the log file when 'file' is one of the destinations.
        """
        if "file" in self.destinations:
            try:
                self.log_file = open(self.config.get("path","pcc.log"),"a")
            except Exception as e:
                self.destinations = [d for d in self.destinations if d != "file"]
                if "stderr" not in self.destinations:
                    self.destinations.append("stderr")
                self.log_file = None
                self.log("ERROR",f"Could not open log file. Reverting to stderr. Details: {e}")

    def handleMessage(self,message):
        """
        Formats a LogMessage entry and writes it to every destination.
        Other message types are ignored.
        """
        msgType = message.get("Message",{}).get("type")
        payload = message.get("Message",{}).get("payload",{})
        sender  = message.get("Sender")

        if msgType != "LogMessage":
            return

        level = str(payload.get("level","INFO")).upper()
        text  = payload.get("message","No message provided.")
        if LEVELS.get(level,LEVELS["INFO"]) < self.threshold:
            return

        log_entry = {
            "timestamp" : time.strftime('%Y-%m-%d %H:%M:%S',time.localtime()),
            "sender"    : sender,
            "level"     : level,
            "message"   : text
        }
        line = f"[{log_entry['timestamp']}] [{log_entry['sender']}] ({log_entry['level']}): {log_entry['message']}"

        if "stderr" in self.destinations:
            print(line,file=sys.stderr)

        if "stdout" in self.destinations:
            print(line)

        if "file" in self.destinations and self.log_file:
            self.log_file.write(json.dumps(log_entry))
            self.log_file.write('\n')
            self.log_file.flush()

    def onStop(self):
        """
        Closes the log file.
        """
        if "file" in self.destinations and self.log_file:
            self.log("INFO","Closing log file.")
            self.log_file.close()
            self.log_file = None
