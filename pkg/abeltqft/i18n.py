"""Localized CLI strings: diagnostics, table headers and help text.

Each ``locales/<lang>.yaml`` file is one language. Lookups fall back to
English, then to the key itself; JSON and CSV keys never go through here.
"""
import locale
import logging
from typing import Dict

import yaml

from abeltqft.paths import get_locales_path

logger = logging.getLogger(__name__)

FALLBACK_LANGUAGE = "en"


class I18n:
    def __init__(self):
        self._current_lang = "auto"
        self._translations: Dict[str, Dict[str, str]] = {
            path.stem: yaml.safe_load(path.read_text(encoding="utf-8")) or {}
            for path in sorted(get_locales_path().glob("*.yaml"))
        }
        self._system_lang = self._detect_system_language()

    @property
    def languages(self) -> list[str]:
        return sorted(self._translations)

    def _detect_system_language(self) -> str:
        try:
            lang, _ = locale.getlocale()
        except (ValueError, TypeError):
            lang = None
        prefix = (lang or "").split("_")[0].lower()
        return prefix if prefix in self._translations else FALLBACK_LANGUAGE

    def set_language(self, lang: str):
        """"auto" follows the system locale; unknown names do too, with a warning."""
        if lang != "auto" and lang not in self._translations:
            logger.warning(f"[I18n] no locale file for {lang!r}, using {self._system_lang}")
            lang = "auto"
        self._current_lang = lang

    @property
    def current_language(self) -> str:
        if self._current_lang == "auto":
            return self._system_lang
        return self._current_lang

    def t(self, key: str, **kwargs) -> str:
        text = (
            self._translations.get(self.current_language, {}).get(key)
            or self._translations.get(FALLBACK_LANGUAGE, {}).get(key)
            or key
        )
        if kwargs:
            try:
                text = text.format(**kwargs)
            except (KeyError, IndexError):
                pass
        return text


i18n = I18n()


def t(key: str, **kwargs) -> str:
    return i18n.t(key, **kwargs)
