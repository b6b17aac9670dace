"""jacktheta: exact Jack-polynomial power-sum coefficients and positivity audits."""

__version__ = "0.1.0"
