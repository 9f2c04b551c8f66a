# Semidirect bijection, separating quotients and RP certificates
