"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import json
import os

import jsonschema

from algebra import Polynomial, isIrreducible
from module  import Module

CACHE_SCHEMA = {
    "type"       : "object",
    "required"   : ["p", "m", "modulus", "d", "polynomials"],
    "properties" : {
        "p"           : {"type": "integer", "minimum": 2},
        "m"           : {"type": "integer", "minimum": 1},
        "modulus"     : {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "d"           : {"type": "integer", "minimum": 1},
        "polynomials" : {
            "type"  : "array",
            "items" : {"type": "array", "items": {"type": "integer", "minimum": 0}}
        }
    }
}

class IrreducibleCache(Module):
    """
    On-disk store of enumerated irreducible polynomials, one JSON file per
    (field, degree). Purely an accelerator: a missing or damaged file is
    recomputed by the caller.
    """
    def __init__(self,cacheDir,logger=None):
        super().__init__("IrreducibleCache",{"cache_dir": cacheDir},None,logger)
        self.cacheDir = cacheDir

    def path(self,field,d):
        modulus = "-".join(str(c) for c in field.modulus)
        return os.path.join(self.cacheDir,f"irr_{field.p}_{field.m}_{modulus}_{d}.json")

    def load(self,field,d):
        """
        Returns:
            list: The cached polynomials, or None when absent or unusable.
        """
        path = self.path(field,d)
        if not os.path.exists(path):
            return None
        try:
            with open(path,"r") as f:
                document = json.load(f)
            jsonschema.validate(document,CACHE_SCHEMA)
            if (document["p"],document["m"],tuple(document["modulus"]),document["d"]) != (field.p,field.m,field.modulus,d):
                raise ValueError("cache file describes another field or degree")
            polys = [Polynomial(field,coeffs) for coeffs in document["polynomials"]]
            if any(poly.degree != d or not poly.isMonic() for poly in polys):
                raise ValueError("cache file holds polynomials of the wrong degree")
            if not all(isIrreducible(poly) for poly in polys):
                raise ValueError("cache file holds a reducible polynomial")
        except (OSError,ValueError,jsonschema.ValidationError) as e:
            self.log("WARNING",f"Ignoring cache file '{path}'. Details: {e}")
            return None
        self.log("DEBUG",f"Loaded {len(polys)} irreducibles of degree {d} over GF({field.order}) from cache.")
        return polys

    def store(self,field,d,polys):
        document = {
            "p"           : field.p,
            "m"           : field.m,
            "modulus"     : list(field.modulus),
            "d"           : d,
            "polynomials" : [list(poly.coeffs) for poly in polys]
        }
        path = self.path(field,d)
        try:
            os.makedirs(self.cacheDir,exist_ok=True)
            tmp = path + ".tmp"
            with open(tmp,"w") as f:
                json.dump(document,f)
            os.replace(tmp,path)
        except OSError as e:
            self.log("WARNING",f"Could not write cache file '{path}'. Details: {e}")
