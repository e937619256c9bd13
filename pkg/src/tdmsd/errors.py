"""Exception vocabulary shared across the package."""


class GraphError(Exception):
    """Base class for every failure raised by this package."""


# construction
class IndexOutOfRange(GraphError): ...
class LoopEdge(GraphError): ...
class TooLarge(GraphError): ...
class TooSmall(GraphError): ...


# structural preconditions
class EdgeNotPresent(GraphError): ...
class NotInSet(GraphError): ...
class IsolatedVertex(GraphError): ...
class Disconnected(GraphError): ...
class IsStar(GraphError): ...
class NotATree(GraphError): ...
class NotInnerEdge(GraphError): ...
class WrongStatus(GraphError): ...


# search / codecs / dispatch
class NotFound(GraphError):
    """An object guaranteed to exist was not found; always indicates a bug."""


class OutOfRange(GraphError): ...
class MalformedInput(GraphError): ...
class UnknownTheorem(GraphError): ...
