# Central characters and the twisted Burnside-Frobenius check
