import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from src.exceptions import InvalidArgumentError
from src.orders import BaseOrder, EqualityOrder, ExplicitOrder, PointwiseOrder
from src.poset import FiniteFunction, FunctionFamily


"""Reads, validates and writes family files.

A family file is a JSON document:
- domain_size: number of positions of every word
- alphabet: distinct symbols, the codomain in order
- order: "equality", "pointwise", or a list of [lower, upper] member index pairs
- functions: words over the alphabet, as strings when every symbol is a single
  character and as lists of symbols otherwise

Usage: Import FamilyLoader class
Example files: In data/families/
"""


logger = logging.getLogger(__name__)

REQUIRED_FIELDS = ("domain_size", "alphabet", "order", "functions")


def family_to_document(family: FunctionFamily) -> Dict[str, Any]:
    single = all(len(symbol) == 1 for symbol in family.alphabet)
    functions: List[Union[str, List[str]]] = [
        "".join(family.alphabet[v] for v in f.values) if single else [family.alphabet[v] for v in f.values]
        for f in family
    ]
    return {
        "domain_size": family.domain_size,
        "alphabet": list(family.alphabet),
        "order": family.order.describe(),
        "functions": functions,
    }


class FamilyLoader:
    def __init__(self, data_dir: str = "data/families"):
        self.data_dir = Path(data_dir)
        self.logger = logger

    def resolve(self, path: Union[str, Path]) -> Path:
        """Accept a path as given, or a bare file name inside the data directory."""
        path = Path(path)
        if path.exists():
            return path
        if (self.data_dir / path).exists():
            return self.data_dir / path
        self.logger.error(f"Missing family file: {path}")
        raise FileNotFoundError(f"Family file not found: {path}")

    def load(self, path: Union[str, Path]) -> FunctionFamily:
        """
        Load and validate one family file.

        Returns:
            FunctionFamily: the members in file order, with the declared order
        """
        path = self.resolve(path)
        try:
            with open(path, encoding="utf-8") as handle:
                document = json.load(handle)
            family = self.from_document(document)
            self.logger.info(f"Loaded {len(family)} functions over a domain of {family.domain_size} from {path}")
            return family
        except Exception as e:
            self.logger.error(f"Error loading family from {path}: {str(e)}")
            raise

    def from_document(self, document: Dict[str, Any]) -> FunctionFamily:
        self._validate_document(document)
        alphabet = [str(symbol) for symbol in document["alphabet"]]
        domain_size = int(document["domain_size"])
        words = [self._split_word(word, alphabet) for word in document["functions"]]
        for word in words:
            if len(word) != domain_size:
                raise InvalidArgumentError(f"Word {word!r} does not have length {domain_size}")
        functions = [FiniteFunction.from_word(word, alphabet) for word in words]
        return FunctionFamily(functions, self._order(document["order"], len(functions)), alphabet)

    def dump(self, family: FunctionFamily, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(family_to_document(family), handle, indent=2)
            handle.write("\n")
        self.logger.info(f"Wrote {len(family)} functions to {path}")
        return path

    def _validate_document(self, document: Any) -> None:
        if not isinstance(document, dict):
            raise InvalidArgumentError("Family file must hold a JSON object")
        missing = [name for name in REQUIRED_FIELDS if name not in document]
        if missing:
            raise InvalidArgumentError(f"Family file missing required fields: {missing}")
        alphabet = document["alphabet"]
        if not isinstance(alphabet, list) or not alphabet:
            raise InvalidArgumentError("Alphabet must be a non-empty list of symbols")
        if len(set(map(str, alphabet))) != len(alphabet):
            raise InvalidArgumentError(f"Alphabet symbols must be distinct: {alphabet}")
        if not isinstance(document["functions"], list) or not document["functions"]:
            raise InvalidArgumentError("A family file needs at least one function")

    @staticmethod
    def _split_word(word: Union[str, List[str]], alphabet: List[str]) -> List[str]:
        if isinstance(word, list):
            return [str(symbol) for symbol in word]
        if all(len(symbol) == 1 for symbol in alphabet):
            return list(word)
        return word.split(",")

    @staticmethod
    def _order(spec: Any, size: int) -> BaseOrder:
        if spec == "equality":
            return EqualityOrder()
        if spec == "pointwise":
            return PointwiseOrder()
        if isinstance(spec, list):
            try:
                pairs = [(int(lower), int(upper)) for lower, upper in spec]
            except (TypeError, ValueError) as e:
                raise InvalidArgumentError(f"Explicit order must be a list of [lower, upper] pairs: {e}") from e
            return ExplicitOrder.from_pairs(pairs, size)
        raise InvalidArgumentError(f"Unknown order {spec!r}; expected equality, pointwise or a pair list")
