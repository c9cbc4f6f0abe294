"""Job files and the command-line driver."""
