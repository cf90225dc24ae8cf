from .blocks import BlockSpec, BlockTridiagonal, assemble_M, block_basis, block_matrices, direct_matrix
from .bareiss import det_exact, det_series
from .schur import (ASource, SchurState, a_fixed_point, a_limits, det_A_k0, det_of_IminusuT,
                    schur_iterate, schur_matrix)
