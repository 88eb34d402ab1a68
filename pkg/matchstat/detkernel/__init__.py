
"""
    Determinant Kernel
    ~~~~~~~~~~~~~~~~~~

    Certified Toeplitz / Toeplitz-minus-Hankel determinants and the
    Levinson (Szego) recursion for orthogonal polynomials on the circle
"""

from .determinant import toeplitz_matrix, toeplitz_hankel_matrix, sine_kernel_matrix, lu_det
from .determinant import toeplitz_det, toeplitz_hankel_det, sine_kernel_det
from .determinant import toeplitz_det_certified, toeplitz_hankel_det_certified, sine_kernel_det_certified
from .determinant import moments_for
from .opuc import OpucSequence, Levinson, levinson_opuc, opuc_at


__all__ = [

    'toeplitz_matrix', 'toeplitz_hankel_matrix', 'sine_kernel_matrix', 'lu_det',
    'toeplitz_det', 'toeplitz_hankel_det', 'sine_kernel_det',
    'toeplitz_det_certified', 'toeplitz_hankel_det_certified', 'sine_kernel_det_certified',
    'moments_for',
    'OpucSequence', 'Levinson', 'levinson_opuc', 'opuc_at',

]
