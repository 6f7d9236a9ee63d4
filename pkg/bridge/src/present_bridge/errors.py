class BridgeError(Exception):
    """Base class for bridge-side failures."""


class UnknownToken(BridgeError):
    def __init__(self, symbol: str):
        super().__init__(f"schedule symbol {symbol!r} is not in the model's token table")
        self.symbol = symbol


class ModelWithoutExplicitDPE(BridgeError):
    def __init__(self, missing: list[str]):
        super().__init__(
            "model lacks explicit duration/pitch/energy prediction: missing "
            + ", ".join(missing))
        self.missing = missing


class VersionMismatch(BridgeError):
    def __init__(self, found: str, expected: str):
        super().__init__(f"schedule version {found!r}, expected {expected!r}")
        self.found = found


class SchemaViolation(BridgeError):
    def __init__(self, path: str, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path = path
