"""The eavesdropper attack: polygon sets per pair, cell filtering across pairs, point sieving."""
