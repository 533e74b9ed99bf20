# End-to-end tests of the command line and the identity suite.
