"""Jerarquía de excepciones común a todos los módulos de walkspec."""


class WalkspecError(Exception):
    """Clase base de todos los errores de walkspec."""


class DimensionError(WalkspecError, ValueError):
    """Las dimensiones de matrices o vectores no son compatibles."""


class SingularMatrixError(WalkspecError, ValueError):
    """La operación necesita una matriz no singular."""


class SingularWalkMatrixError(SingularMatrixError):
    """W(G) es singular, así que la matriz ortogonal Q no está determinada."""


class UnsupportedOrderError(WalkspecError, ValueError):
    """El orden del grafo está fuera de los límites soportados."""


class MixedOrderError(WalkspecError, ValueError):
    """Un corpus mezcla grafos de órdenes distintos."""


class NotCospectralError(WalkspecError):
    """Los dos grafos no tienen el mismo espectro generalizado."""


class CertificateFormatError(WalkspecError, ValueError):
    """Un certificado guardado no cumple el esquema."""


class Graph6ParseError(WalkspecError, ValueError):
    """Texto graph6 mal formado; ``offset`` es el byte donde falló la lectura."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte {offset})")
        self.reason = message
        self.offset = offset
