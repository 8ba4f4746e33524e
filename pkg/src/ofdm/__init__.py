from .frontend import ReceivedFrame, SymbolFrame, demodulate, modulate, random_frame, transmit

__all__ = ['ReceivedFrame', 'SymbolFrame', 'demodulate', 'modulate', 'random_frame', 'transmit']
