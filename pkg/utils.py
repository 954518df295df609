"""
Fonctions utilitaires pour Edit Distance Lab
"""
import os
import time
import logging
from typing import Iterable, Optional
from exceptions import DeadlineExceeded

logger = logging.getLogger(__name__)


class Deadline:
    """
    Échéance coopérative: les algorithmes appellent check() entre deux étapes

    Args:
        seconds: Durée autorisée en secondes (None = pas de limite)
    """

    def __init__(self, seconds: Optional[float] = None):
        self.seconds = seconds
        self.started = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.started

    def expired(self) -> bool:
        return self.seconds is not None and self.elapsed > self.seconds

    def check(self, where: str = "") -> None:
        """Lève DeadlineExceeded si le temps est écoulé"""
        if self.expired():
            raise DeadlineExceeded(f"limite de {self.seconds}s dépassée {where}".strip())


def check_deadline(deadline: Optional[Deadline], where: str = "") -> None:
    if deadline is not None:
        deadline.check(where)


class PeriodicCheck:
    """Vérifie l'échéance toutes les `every` itérations d'une boucle interne"""

    def __init__(self, deadline: Optional[Deadline], every: int, where: str = ""):
        self.deadline = deadline
        self.every = every
        self.where = where
        self.count = 0

    def tick(self) -> None:
        if self.deadline is None:
            return
        self.count += 1
        if self.count % self.every == 0:
            self.deadline.check(self.where)


def read_text_file(file_path: str) -> str:
    """
    Lit un fichier texte (UTF-8)

    Args:
        file_path: Chemin du fichier

    Returns:
        str: Contenu du fichier
    """
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"fichier introuvable: {file_path}")
    with open(file_path, 'r', encoding='utf-8') as f:
        return f.read()


def format_duration(seconds) -> str:
    """Formate une durée en secondes pour les tableaux de benchmark"""
    if seconds is None:
        return "-"
    seconds = float(seconds)
    if seconds < 1:
        return f"{seconds:.3f}s"
    if seconds < 60:
        return f"{seconds:.2f}s"
    if seconds < 3600:
        minutes = int(seconds // 60)
        secs = seconds - minutes * 60
        return f"{minutes}m {secs:.0f}s"
    hours = int(seconds // 3600)
    minutes = int((seconds % 3600) // 60)
    return f"{hours}h {minutes}m"


def format_word(word: Iterable[str]) -> str:
    """Affiche un mot; les symboles de plusieurs caractères sont séparés par des espaces"""
    symbols = list(word)
    if all(len(s) == 1 for s in symbols):
        return ''.join(symbols) or 'ε'
    return ' '.join(symbols) or 'ε'
