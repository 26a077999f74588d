"""
Theme manager for omega-entropy table output.
"""

from typing import Dict, List

DEFAULT_THEME = "dark"


class ThemeManager:
    """Manages the color themes used by human-readable tables."""

    def __init__(self, theme: str = DEFAULT_THEME):
        self.themes = {
            "dark": self._get_dark_theme(),
            "light": self._get_light_theme(),
            "plain": self._get_plain_theme(),
        }
        self.current_theme = theme if theme in self.themes else DEFAULT_THEME

    def _get_dark_theme(self) -> Dict[str, str]:
        """Get dark theme colors."""
        return {
            'title': 'bold cyan',
            'header': 'bold blue',
            'label': 'cyan',
            'number': 'white',
            'flag_on': 'bold green',
            'flag_off': 'bright_black',
            'warning': 'yellow',
            'border': 'cyan',
        }

    def _get_light_theme(self) -> Dict[str, str]:
        """Get light theme colors."""
        return {
            'title': 'bold blue',
            'header': 'bold cyan',
            'label': 'blue',
            'number': 'black',
            'flag_on': 'bold green',
            'flag_off': 'bright_black',
            'warning': 'yellow',
            'border': 'blue',
        }

    def _get_plain_theme(self) -> Dict[str, str]:
        """No colors, for logs and dumb terminals."""
        return {key: '' for key in self._get_dark_theme()}

    def get_available_themes(self) -> List[str]:
        """Get list of available theme names."""
        return list(self.themes.keys())

    def get_theme_colors(self) -> Dict[str, str]:
        """Get the current theme colors."""
        return self.themes[self.current_theme]

    def style(self, key: str) -> str:
        return self.get_theme_colors().get(key, '')
