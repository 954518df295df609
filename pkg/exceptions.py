"""
Exceptions propres à Edit Distance Lab
"""


class EditDistanceError(Exception):
    """Erreur de base du projet"""


class TwoWordsRequiredError(EditDistanceError):
    """Le langage doit contenir au moins deux mots"""

    def __init__(self, message: str = "language must contain at least two words"):
        super().__init__(message)


class GrailParseError(EditDistanceError):
    """
    Texte Grail invalide

    Args:
        line_number: Numéro de ligne (à partir de 1), 0 si l'erreur porte sur tout le fichier
        line: Contenu de la ligne fautive
        reason: Description du problème
    """

    def __init__(self, line_number: int, line: str, reason: str):
        self.line_number = line_number
        self.line = line
        self.reason = reason
        if line_number:
            super().__init__(f"ligne {line_number}: {reason} ({line.strip()!r})")
        else:
            super().__init__(reason)


class DeadlineExceeded(EditDistanceError):
    """Le temps alloué au calcul est écoulé"""


class InvariantViolation(EditDistanceError):
    """Une borne de sécurité interne a été dépassée"""
