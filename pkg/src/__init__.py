# Secure MIMO-OFDM - physical-layer security simulator
