"""Quantum coloring certificates."""

import numpy as np

from qgbounds import build_context, cert_for_complete, complete_graph
from qgbounds.coloring import ColoringCertificate, check_certificate, verify_certificate

ctx = build_context((2,))
G = complete_graph(ctx)

# four colors with a four dimensional auxiliary space
cert = cert_for_complete(ctx)
print("colors", cert.c, "aux", cert.h)
rep = check_certificate(G, cert, lemmas=True)
print("valid:", rep.verdict)
print("pinching holds:", rep.pinching.holds(), "twirling holds:", rep.twirling.holds())

# nudging one projection is caught
Ps = list(cert.projections)
Ps[0] = Ps[0] + 1e-3 * np.ones_like(Ps[0]) / Ps[0].shape[0]
bad = ColoringCertificate(cert.c, cert.h, tuple(Ps))
print("perturbed worst residuals:", verify_certificate(G, bad).worst())
