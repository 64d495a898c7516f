# Códigos de salida de la línea de comandos
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE_ERROR = 2
EXIT_NOT_COSPECTRAL = 3
EXIT_ISOMORPHIC = 4
EXIT_INVARIANT_VIOLATION = 5
EXIT_UNCERTIFIABLE = 6

OUTPUT_FORMATS = ("human", "json-lines", "csv")

GRAPH6_HEADER = ">>graph6<<"

# Marcadores de estado para la salida humana
OK_MARK = "✅"
FAIL_MARK = "❌"
WARN_MARK = "⚠️"
