class QDiscError(Exception):
    """Base error; `code` and `text` become the {'error': ..., 'text': ...} body of the CLI and the API."""
    code = 'qdisc-error'

    def __init__(self, text: str = '', **details):
        super().__init__(text)
        self.text = text
        self.details = details

    def as_dict(self) -> dict:
        output = {'error': self.code, 'text': self.text}
        output.update(self.details)

        return output


class ScalarDivisionError(QDiscError, ZeroDivisionError):
    code = 'division-by-zero'


class PoleError(QDiscError, ArithmeticError):
    code = 'pole'


class SeriesOrderError(QDiscError, ValueError):
    code = 'order-mismatch'


class NotAPowerSeriesError(QDiscError, ValueError):
    code = 'not-a-power-series'


class UndefinedCoefficientError(QDiscError, ValueError):
    code = 'undefined-coefficient'


class ValidityRangeError(QDiscError, IndexError):
    code = 'validity-range'


class WindowError(QDiscError, ValueError):
    code = 'window-too-large'


class InconsistentSymbolError(QDiscError, ArithmeticError):
    code = 'inconsistent-symbol'


class ExpressionError(QDiscError, ValueError):
    code = 'parse-error'

    def __init__(self, text: str = '', position: int = None, code: str = None):
        super().__init__(text, position=position)
        self.position = position
        if code:
            self.code = code
