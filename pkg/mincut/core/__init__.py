"""核心层：配置、事件总线、异常"""
