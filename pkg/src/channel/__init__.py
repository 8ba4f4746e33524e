from .channel_model import (
    ChannelRealization,
    OfdmOperators,
    channel_from_taps,
    cp_insertion_matrix,
    cp_removal_matrix,
    draw_channel,
    effective_channel,
    off_block_mass_ratio,
    ofdm_operators,
    subcarrier_blocks,
    subcarrier_permutation,
    to_antenna_major,
    to_subcarrier_major,
    toeplitz_block,
)

__all__ = [
    'ChannelRealization', 'OfdmOperators', 'channel_from_taps',
    'cp_insertion_matrix', 'cp_removal_matrix', 'draw_channel',
    'effective_channel', 'off_block_mass_ratio', 'ofdm_operators',
    'subcarrier_blocks', 'subcarrier_permutation', 'to_antenna_major',
    'to_subcarrier_major', 'toeplitz_block',
]
